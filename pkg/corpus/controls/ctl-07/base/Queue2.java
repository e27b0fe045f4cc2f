package c7;

public class Queue2 {
    public void push(int v) {
    }
}
