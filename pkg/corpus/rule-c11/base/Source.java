package rd;

public interface Source {
    int next();
}
