package paint;

public class Hue {
    public int red;
    public int green;
    public int blue;
}
