package mtr;

public class Meter {
    public long read() {
        return 0;
    }

    public void sample() {
        store((int) read());
    }

    public void store(int v) {
    }
}
