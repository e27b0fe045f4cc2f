package zoo;

public class Lion extends Animal {
    protected double weight() {
        return 200;
    }
}
