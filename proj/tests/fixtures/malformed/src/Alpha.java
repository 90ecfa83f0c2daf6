package sample;

public class Alpha {
    private int count;

    public int count() {
        return count;
    }
}
