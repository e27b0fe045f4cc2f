package c3;

public class Panel {
    public void draw() {
        int frame = 1;
    }
}
