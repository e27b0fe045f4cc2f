package pools;

public class Pool {
    protected int used;

    public int available() {
        return 100 - used;
    }
}
