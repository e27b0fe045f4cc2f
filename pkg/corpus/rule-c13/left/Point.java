package geo2;

public class Point {
    public int column;
}
