package sens;

public interface Sensor {
    double read();

    void reset();
}
