package pack;

public class Box {
    public int depth() {
        return 0;
    }
}
