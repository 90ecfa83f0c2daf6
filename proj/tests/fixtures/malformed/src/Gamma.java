package sample;

public class Gamma {
    private int count;

    public int count() {
        return count;
    }
}
