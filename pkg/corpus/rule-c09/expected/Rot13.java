package crypt;

public class Rot13 implements Cipher {
    public String wrap(String t, int rounds) {
        return t;
    }
}
