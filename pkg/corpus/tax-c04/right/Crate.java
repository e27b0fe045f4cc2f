package pack;

public class Crate extends Box {
    public int depth() {
        return 1;
    }
}
