package bill;

public class Invoice {
    public int total;
    public int taxCents;

    public void addLine(int amount) {
        total = total + amount;
    }
}
