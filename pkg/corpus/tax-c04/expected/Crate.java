package pack;

public class Crate extends Box {
    public long depth() {
        return 1;
    }
}
