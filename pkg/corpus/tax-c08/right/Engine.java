package power;

public interface Engine {
    void start();
}
