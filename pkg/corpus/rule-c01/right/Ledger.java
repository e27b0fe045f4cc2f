package bill;

public class Ledger {
    public void post() {
        Invoice inv = new Invoice();
        inv.total = 5;
    }
}
