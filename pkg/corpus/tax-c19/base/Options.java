package cfg;

public class Options {
    protected int retries;

    public int backoff() {
        int r = retries;
        return r * 2;
    }
}
