package c2;

public class Tag {
    public String label;
}
