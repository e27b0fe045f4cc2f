package c9;

public class Alarm {
    public void ring() {
    }

    public long due() {
        Clock c = new Clock();
        return c.now();
    }
}
