package c8;

public class Vault {
    private void wipe() {
    }

    public void lock() {
    }
}
