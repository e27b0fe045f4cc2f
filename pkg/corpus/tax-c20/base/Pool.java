package pools;

public class Pool {
    protected int limit;
    protected int used;

    public int available() {
        return limit - used;
    }
}
