package hier2;

public class Child extends Base {
    protected int size() {
        return 2;
    }
}
