package mtr;

public class Meter {
    public int read() {
        return 0;
    }

    public void sample() {
        store(read());
    }

    public void store(int v) {
    }

    public void log() {
        store(read());
    }
}
