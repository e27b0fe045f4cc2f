package pools;

public class Pool {
    protected int limit;
    protected int used;

    public int available() {
        return limit - used;
    }

    public int free() {
        return limit - used;
    }
}
