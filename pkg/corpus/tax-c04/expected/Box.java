package pack;

public class Box {
    public long depth() {
        return 0;
    }
}
