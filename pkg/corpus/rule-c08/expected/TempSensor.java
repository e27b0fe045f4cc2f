package sens;

public class TempSensor implements Sensor {
    public double read() {
        return 0;
    }

    public void reset() {
    }
}
