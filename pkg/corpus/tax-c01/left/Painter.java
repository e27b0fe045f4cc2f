package paint;

public class Painter {
    public void clear() {
    }
}
