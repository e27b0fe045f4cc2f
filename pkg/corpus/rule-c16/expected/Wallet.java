package acct;

public class Wallet {
    private long cents;

    public long balance() {
        return cents;
    }

    public void init() {
    }
}
