package acct;

public class Wallet {
    private long cents;

    public void init() {
    }
}
