package rd;

public class ArraySource implements Source {
    public int pull() {
        return 1;
    }
}
