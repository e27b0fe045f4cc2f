package bill;

public class Receipt {
    public int total;
    public int taxCents;

    public void addLine(int amount) {
        total = total + amount;
    }
}
