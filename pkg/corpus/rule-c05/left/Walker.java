package fs;

public class Walker {
    public void noop() {
    }
}
