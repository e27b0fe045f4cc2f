package med;

public class Disc {
    public String title() {
        return "d";
    }
}
