package med;

public class Disc {
    public Object title() {
        return "d";
    }
}
