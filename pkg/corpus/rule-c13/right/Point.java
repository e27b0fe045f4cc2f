package geo2;

public class Point {
    public int col;

    public int width() {
        return col * 2;
    }
}
