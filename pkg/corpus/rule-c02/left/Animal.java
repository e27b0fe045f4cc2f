package zoo;

public class Animal {
    public void feed() {
    }

    protected int weight() {
        return 10;
    }
}
