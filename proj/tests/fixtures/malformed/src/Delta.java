package sample;

public class Delta {
    private int count;

    public int count() {
        return count;
    }
}
