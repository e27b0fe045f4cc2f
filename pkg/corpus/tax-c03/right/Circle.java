package geo;

public class Circle extends Shape {
    public void scale(int factor) {
    }
}
