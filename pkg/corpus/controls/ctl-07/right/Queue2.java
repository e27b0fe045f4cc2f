package c7;

public class Queue2 {
    public void push(int v) {
    }

    public void seed() {
        push(1, true);
    }
}
