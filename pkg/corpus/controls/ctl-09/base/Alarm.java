package c9;

public class Alarm {
    public void ring() {
    }
}
