package c10;

public class Paint {
    public void mix() {
        int parts = 2;
        int tint = parts + 1;
    }

    public void stir() {
    }
}
