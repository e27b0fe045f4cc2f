package c2;

public class Badge {
    public String label;
}
