package bill;

public class Ledger {
    public void post() {
        Receipt inv = new Receipt();
        inv.total = 5;
    }
}
