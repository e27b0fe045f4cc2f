package pools;

public class Pool {
    protected int used;

    public int available() {
        return 100 - used;
    }

    public int free() {
        return 100 - used;
    }
}
