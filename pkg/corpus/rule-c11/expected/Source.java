package rd;

public interface Source {
    int pull();
}
