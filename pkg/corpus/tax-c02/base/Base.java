package hier2;

public class Base {
    public void ping() {
    }
}
