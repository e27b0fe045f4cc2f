package rd;

public class ArraySource implements Source {
    public int next() {
        return 1;
    }
}
