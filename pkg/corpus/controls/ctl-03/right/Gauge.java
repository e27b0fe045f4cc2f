package c3;

public class Gauge {
    public int level() {
        return 7;
    }
}
