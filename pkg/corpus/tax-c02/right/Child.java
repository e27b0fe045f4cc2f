package hier2;

public class Child extends Base {
    protected long size() {
        return 2;
    }
}
