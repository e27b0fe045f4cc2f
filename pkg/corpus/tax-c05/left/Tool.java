package util2;

public class Tool {
    public void run() {
    }
}
