package c3;

public class Panel {
    public void draw() {
    }
}
