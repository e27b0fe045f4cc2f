package c1;

public class Counter {
    private int n;

    public void up() {
        n = n + 2;
    }

    public void down() {
        n = n - 1;
    }
}
