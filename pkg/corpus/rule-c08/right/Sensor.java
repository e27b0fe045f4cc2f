package sens;

public interface Sensor {
    double read();
}
