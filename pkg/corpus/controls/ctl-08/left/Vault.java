package c8;

public class Vault {
    public void lock() {
    }
}
