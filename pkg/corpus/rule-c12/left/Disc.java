package med;

public class Disc implements Player {
    public String title() {
        return "d";
    }
}
