package power;

public class Diesel implements Engine {
    public void start() {
    }

    public int rpm() {
        return 0;
    }
}
