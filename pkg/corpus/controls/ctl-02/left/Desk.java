package c2;

public class Desk {
    public void tidy() {
        int piles = 3;
    }
}
