package paint;

public class Canvas {
    public void fill() {
        Color c = new Color();
        c.red = 255;
    }
}
