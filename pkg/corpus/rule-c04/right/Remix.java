package mus;

public class Remix extends Track {
    public int length() {
        return 3;
    }
}
