package c5;

public class Report {
    public void emit() {
    }
}
