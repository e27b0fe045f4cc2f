package hier2;

public class Base {
    public void ping() {
    }

    protected int size() {
        return 1;
    }
}
