package zoo;

public class Lion extends Animal {
    protected int weight() {
        return 200;
    }
}
