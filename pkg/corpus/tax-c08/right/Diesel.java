package power;

public class Diesel implements Engine {
    public void start() {
    }
}
