package c1;

public class Counter {
    private int n;

    public void up() {
        n = n + 1;
    }

    public void down() {
        n = n - 1;
    }
}
