package inv;

public class Store {
    private int size;

    public void open() {
    }

    public int count() {
        return 0;
    }
}
