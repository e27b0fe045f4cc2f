package crypt;

public interface Cipher {
    String wrap(String t, int rounds);
}
