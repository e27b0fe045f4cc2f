package geo2;

public class Point {
    public int column;

    public int width() {
        return column * 2;
    }
}
