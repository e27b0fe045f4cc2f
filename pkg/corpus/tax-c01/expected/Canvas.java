package paint;

public class Canvas {
    public void fill() {
        Hue c = new Hue();
        c.red = 255;
    }
}
