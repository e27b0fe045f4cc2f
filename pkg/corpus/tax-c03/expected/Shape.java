package geo;

public class Shape {
    public void scale(int factor, boolean deep) {
    }
}
