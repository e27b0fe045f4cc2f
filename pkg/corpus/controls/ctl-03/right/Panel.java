package c3;

public class Panel {
    public void draw() {
    }

    public int sample() {
        Gauge g = new Gauge();
        return g.level();
    }
}
