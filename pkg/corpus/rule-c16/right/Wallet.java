package acct;

public class Wallet {
    private long cents;

    public void init() {
    }

    public long balance() {
        return 0;
    }
}
