package cfg;

public class Options {
    protected long retries;

    public int backoff() {
        int r = (int) retries;
        return r * 2;
    }
}
