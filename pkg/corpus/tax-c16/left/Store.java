package inv;

public class Store {
    private int size;

    public int count() {
        return size;
    }

    public void open() {
    }
}
