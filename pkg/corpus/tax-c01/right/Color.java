package paint;

public class Color {
    public int red;
    public int green;
    public int blue;
}
