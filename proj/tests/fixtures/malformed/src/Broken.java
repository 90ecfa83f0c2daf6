package sample;

public class Broken {
    public void run( {
        return;
    }
